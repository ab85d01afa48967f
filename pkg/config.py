import os
import json
import logging
from pathlib import Path

from dotenv import load_dotenv


class Config:
    """Centralized configuration management for the coloring workbench"""

    def __init__(self, config_file=None):
        self.base_dir = Path(__file__).parent
        env_file = os.getenv('RAMSEY_WORKBENCH_CONFIG')
        self.config_file = Path(config_file or env_file or self.base_dir / 'config.json')
        self._load_config()

    def _load_config(self):
        """Load configuration from file or fall back to defaults"""
        default_config = {
            "search": {
                "path_cycle_cap": 20,
                "dp_vertex_limit": 20
            },
            "enumeration": {
                "max_colorings": 2 ** 25,
                "workers": 1,
                "chunks_per_worker": 4,
                "max_group_order": 5040
            },
            "heuristic": {
                "budget": 2000,
                "patience": 200,
                "seed": 0,
                "temperature": 0.5,
                "count_limit": 2000
            },
            "output": {
                "reports_dir": str(self.base_dir / "reports")
            },
            "logging": {
                "level": "INFO",
                "file": str(self.base_dir / "logs" / "ramsey_workbench.log")
            }
        }

        if self.config_file.exists():
            try:
                with open(self.config_file, 'r') as f:
                    user_config = json.load(f)
                # Deep merge user config with defaults
                self._deep_merge(default_config, user_config)
            except Exception as e:
                logging.getLogger(__name__).warning(
                    f"Could not load config file {self.config_file}: {e}. Using defaults.")

        self.config = default_config

        load_dotenv()
        self._load_from_env()

    def _deep_merge(self, base, update):
        """Deep merge two dictionaries"""
        for key, value in update.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._deep_merge(base[key], value)
            else:
                base[key] = value

    def _load_from_env(self):
        """Load configuration from environment variables"""
        env_mappings = {
            'RAMSEY_SEARCH_CAP': ('search', 'path_cycle_cap'),
            'RAMSEY_DP_LIMIT': ('search', 'dp_vertex_limit'),
            'RAMSEY_MAX_COLORINGS': ('enumeration', 'max_colorings'),
            'RAMSEY_WORKERS': ('enumeration', 'workers'),
            'RAMSEY_HEURISTIC_BUDGET': ('heuristic', 'budget'),
            'RAMSEY_HEURISTIC_SEED': ('heuristic', 'seed'),
            'RAMSEY_LOG_LEVEL': ('logging', 'level'),
            'RAMSEY_LOG_FILE': ('logging', 'file'),
            'RAMSEY_REPORTS_DIR': ('output', 'reports_dir')
        }

        for env_var, (section, key) in env_mappings.items():
            value = os.getenv(env_var)
            if value is not None:
                # Convert string values to the type of the default
                current = self.config[section][key]
                if isinstance(current, bool):
                    self.config[section][key] = value.lower() in ('true', '1', 'yes', 'on')
                elif isinstance(current, int):
                    try:
                        self.config[section][key] = int(value)
                    except ValueError:
                        pass
                elif isinstance(current, float):
                    try:
                        self.config[section][key] = float(value)
                    except ValueError:
                        pass
                else:
                    self.config[section][key] = value

    def save(self):
        """Save the merged configuration to the config file"""
        try:
            self.config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, 'w') as f:
                json.dump(self.config, f, indent=2)
        except Exception as e:
            logging.getLogger(__name__).warning(f"Could not save config file: {e}")

    def get(self, section, key=None, default=None):
        """Get configuration value"""
        if key is None:
            return self.config.get(section, default)
        return self.config.get(section, {}).get(key, default)

    def set(self, section, key, value):
        """Set configuration value (in memory; call save() to persist)"""
        if section not in self.config:
            self.config[section] = {}
        self.config[section][key] = value

    def search_cap(self):
        """Largest graph (in vertices) exact path/cycle search accepts"""
        return int(self.get('search', 'path_cycle_cap', 20))

    def dp_vertex_limit(self):
        """Largest graph searched with the memoized subset search"""
        return int(self.get('search', 'dp_vertex_limit', 20))

    def max_colorings(self):
        return int(self.get('enumeration', 'max_colorings', 2 ** 25))

    def default_workers(self):
        return max(1, int(self.get('enumeration', 'workers', 1)))


# Global config instance
config = Config()
