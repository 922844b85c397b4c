from .storage import ReportStore
from .exporter import PointSetExporter
from .manager import ResultsManager

__all__ = ['ReportStore', 'PointSetExporter', 'ResultsManager']
