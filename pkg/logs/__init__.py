from .logger import cli, configure
