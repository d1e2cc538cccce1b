"""Output formatting utilities."""

import json
from typing import Any, Dict, List, Optional, Union

import click
import yaml
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

console = Console()


class OutputFormatter:
    """Formatter for CLI output.

    ``json`` and ``yaml`` are machine-readable and keep a single record as one
    object; ``table`` flattens records into rows for a terminal.
    """

    SUPPORTED_FORMATS = ["table", "json", "yaml"]

    def __init__(self, format_type: str = "json"):
        if format_type not in self.SUPPORTED_FORMATS:
            raise ValueError(f"Unsupported format: {format_type}")
        self.format_type = format_type

    def format(
        self,
        data: Any,
        columns: Optional[List[str]] = None,
        headers: Optional[Dict[str, str]] = None,
    ) -> Union[str, Table]:
        """Format data for output.

        Args:
            data: Data to format (dict, list, or Pydantic model)
            columns: Columns to include for table format
            headers: Column header mappings

        Returns:
            Formatted string or Table object
        """
        plain = self._plain(data)

        if self.format_type == "json":
            return json.dumps(plain, indent=2, ensure_ascii=False)
        elif self.format_type == "yaml":
            return yaml.dump(plain, default_flow_style=False, sort_keys=False, allow_unicode=True)
        items = plain if isinstance(plain, list) else [plain]
        return self._format_table(items, columns, headers)

    def _plain(self, data: Any) -> Any:
        if isinstance(data, BaseModel):
            return data.model_dump(mode="json")
        if isinstance(data, list):
            return [self._plain(item) for item in data]
        if isinstance(data, dict):
            return {k: self._plain(v) for k, v in data.items()}
        if isinstance(data, tuple):
            return [self._plain(item) for item in data]
        return data

    def _format_table(
        self,
        items: List[Dict],
        columns: Optional[List[str]] = None,
        headers: Optional[Dict[str, str]] = None,
    ) -> Union[str, Table]:
        if not items:
            return "No data to display."

        if columns is None:
            columns = list(items[0].keys())

        table = Table(show_header=True, header_style="bold", show_edge=False, show_lines=False)

        for col in columns:
            header_name = headers.get(col, col) if headers else col
            table.add_column(header_name, overflow="fold")

        for item in items:
            row = [self._format_value(item.get(col, "")) for col in columns]
            table.add_row(*row)

        return table

    def _format_value(self, value: Any) -> str:
        """Format a single value for display."""
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "Yes" if value else "No"
        if isinstance(value, list):
            text = json.dumps(value)
            return text if len(text) <= 60 else f"[{len(value)} items]"
        if isinstance(value, dict):
            return ", ".join(f"{k}={self._format_value(v)}" for k, v in value.items())
        return str(value)

    def print(
        self,
        data: Any,
        columns: Optional[List[str]] = None,
        headers: Optional[Dict[str, str]] = None,
    ) -> None:
        """Print formatted data; text formats go straight to stdout, tables through rich."""
        output = self.format(data, columns, headers)
        if isinstance(output, str):
            click.echo(output.rstrip("\n"))
        else:
            console.print(output)


def format_output(
    data: Any,
    format_type: str = "json",
    columns: Optional[List[str]] = None,
    headers: Optional[Dict[str, str]] = None,
) -> Union[str, Table]:
    """Format data for output.

    Args:
        data: Data to format
        format_type: Output format (table/json/yaml)
        columns: Columns to include
        headers: Column header mappings

    Returns:
        Formatted string or Table object
    """
    formatter = OutputFormatter(format_type)
    return formatter.format(data, columns, headers)


def record_rows(record) -> List[Dict[str, Any]]:
    """One row per value of a ResultRecord, with its provenance tag."""
    return [
        {"name": name, "value": value, "provenance": record.provenance.get(name, "")}
        for name, value in record.values.items()
    ]


def print_record(record, format_type: str) -> None:
    """Print a ResultRecord: whole record for json/yaml, a value table otherwise."""
    formatter = OutputFormatter(format_type)
    if format_type != "table":
        formatter.print(record)
        return
    formatter.print(record_rows(record), columns=["name", "value", "provenance"])
    if record.witnesses:
        formatter.print([{"witness": k, "value": v} for k, v in record.witnesses.items()])
    console.print(
        f"[dim]{record.command}: {record.status} in {record.elapsed_seconds:.3f}s[/dim]"
    )
