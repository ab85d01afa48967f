from .instance_file import (
    FORMAT_VERSION, InstanceFile, from_extremal, serialize_instance,
    load_instance, parse_instance, read_instance_file, write_instance_file,
)
from .dot_export import export_dot
from .reports import FRONTIER_COLUMNS, write_frontier_csv, read_frontier_csv, json_report
