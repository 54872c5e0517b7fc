"""Report model and JSON/CSV writers."""

from AW_Forge.storage.report_store import Report, ReportStore

__all__ = ["Report", "ReportStore"]
