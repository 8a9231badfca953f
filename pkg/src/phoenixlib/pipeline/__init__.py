"""
The `phoenixlib.pipeline` subpackage holds the daily runs, the events file
format, aggregate reports with their figures, the HTTP coding endpoint and
the command line interface.
"""

__all__ = [
    "COLUMNS",
    "REPORT_KINDS",
    "DailyRunManifest",
    "EventRecord",
    "ReportTable",
    "code_documents",
    "create_app",
    "main",
    "one_a_day",
    "plot_report",
    "read_manifest",
    "read_records",
    "report",
    "run_daily",
    "serve",
    "write_records",
]

from phoenixlib._src.display.display import plot_report
from phoenixlib._src.pipeline.pipeline_cli import main
from phoenixlib._src.pipeline.pipeline_daily import (
    DailyRunManifest,
    code_documents,
    one_a_day,
    read_manifest,
    run_daily,
)
from phoenixlib._src.pipeline.pipeline_records import (
    COLUMNS,
    EventRecord,
    read_records,
    write_records,
)
from phoenixlib._src.pipeline.pipeline_report import REPORT_KINDS, ReportTable, report
from phoenixlib._src.pipeline.pipeline_server import create_app, serve
