"""
Logging, error hierarchy and shared helpers for the coloring workbench
"""

import logging
from pathlib import Path

from config import config


# Setup logging
def setup_logging():
    """Setup logging from the `logging` config section"""
    log_config = config.get('logging')

    handlers = [logging.StreamHandler()]
    log_file = log_config.get('file')
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path))

    logging.basicConfig(
        level=getattr(logging, str(log_config.get('level', 'INFO')).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )

    # Reduce verbosity of some libraries
    logging.getLogger('reportlab').setLevel(logging.WARNING)

    return logging.getLogger('ramsey_workbench')


logger = setup_logging()


class WorkbenchError(Exception):
    """Base exception for workbench errors"""
    pass


class HostError(WorkbenchError, ValueError):
    """Invalid part sizes"""
    pass


class ColoringError(WorkbenchError, ValueError):
    """Bad vertex pair, incomplete or dual-colored edge map"""
    pass


class DualColorError(ColoringError):
    """An edge was given both colors"""
    pass


class IncompleteColoringError(ColoringError):
    """Some cross pair has no color"""
    pass


class CertificateError(WorkbenchError, ValueError):
    """Malformed absence certificate"""
    pass


class SearchError(WorkbenchError, ValueError):
    """Bad arguments to a structure search"""
    pass


class SearchCapExceeded(SearchError):
    """Graph is larger than the exact search accepts"""
    pass


class EnumerationCapExceeded(WorkbenchError):
    """Too many colorings to enumerate"""
    pass


class InstanceFormatError(WorkbenchError, ValueError):
    """Instance file does not parse; `code` names the failure"""

    CODES = (
        'malformed', 'unsupported_version', 'length_mismatch', 'unknown_color',
        'invalid_vertex', 'dual_color', 'incomplete', 'invalid_certificate'
    )

    def __init__(self, code, message):
        if code not in self.CODES:
            raise ValueError(f"Unknown instance error code: {code}")
        super().__init__(f"[{code}] {message}")
        self.code = code


def to_builtin(data):
    """
    Convert numpy scalars/arrays, tuples and sets to JSON-ready builtins

    Args:
        data: Data to convert
    """
    if data is None:
        return None

    if hasattr(data, 'item') and not isinstance(data, (list, tuple, dict)) and getattr(data, 'ndim', 0) == 0:
        return data.item()  # numpy scalar
    if hasattr(data, 'tolist'):  # numpy array
        return data.tolist()
    if isinstance(data, dict):
        return {str(k): to_builtin(v) for k, v in data.items()}
    if isinstance(data, (set, frozenset)):
        return [to_builtin(item) for item in sorted(data)]
    if isinstance(data, (list, tuple)):
        return [to_builtin(item) for item in data]
    return data


def exit_code_for(error):
    """Exit code of the CLI contract for an exception"""
    if isinstance(error, (SearchCapExceeded, EnumerationCapExceeded)):
        return 3
    return 2


def create_error_report(command, error):
    """
    Create a standardized error report for a CLI subcommand

    Args:
        command: Name of the subcommand
        error: The exception that occurred
    """
    report = {
        'command': command,
        'error': str(error),
        'error_type': type(error).__name__,
        'exit_code': exit_code_for(error)
    }
    if isinstance(error, InstanceFormatError):
        report['error_code'] = error.code

    logger.error(f"{command} failed: {error}")
    return report
