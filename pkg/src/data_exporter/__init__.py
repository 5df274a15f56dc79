from .table_exporter import TableExporter, EXPORT_FORMATS, frame_records, write_atomic
from .report_generator import ReportGenerator, to_jsonable

__all__ = [
    'TableExporter',
    'EXPORT_FORMATS',
    'frame_records',
    'write_atomic',
    'ReportGenerator',
    'to_jsonable'
]
