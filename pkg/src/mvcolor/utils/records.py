"""Assembling ResultRecords for command output."""

import time
from typing import Any, Dict, Optional

import click

from mvcolor.config import MvColorConfig
from mvcolor.core.budget import NodeBudget
from mvcolor.models.results import ResultRecord
from mvcolor.utils.output import print_record


def current_config(ctx: click.Context) -> MvColorConfig:
    obj = ctx.find_root().obj or {}
    config = obj.get("config")
    return config if config is not None else MvColorConfig()


class RecordRun:
    """Collects values, provenance and witnesses of one command, with timing and budget."""

    def __init__(self, ctx: click.Context, command: str, request: Optional[Dict[str, Any]] = None):
        self.config = current_config(ctx)
        self.budget = NodeBudget(self.config.search.node_budget, label=command)
        self.record = ResultRecord(command=command, request=request or {})
        self._start = time.perf_counter()

    def value(self, name: str, value: Any, provenance: str = "exact") -> None:
        self.record.values[name] = value
        self.record.provenance[name] = provenance

    def witness(self, name: str, value: Any) -> None:
        self.record.witnesses[name] = value

    def finish(self, status: str = "ok") -> ResultRecord:
        self.record.elapsed_seconds = round(time.perf_counter() - self._start, 3)
        self.record.budget = {"limit": self.budget.limit, "nodes": self.budget.nodes}
        self.record.status = status
        return self.record

    def emit(self, status: str = "ok") -> ResultRecord:
        record = self.finish(status)
        print_record(record, self.config.defaults.output_format)
        return record
