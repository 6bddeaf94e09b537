"""Version, console messages and runtime configuration."""
from .config import Settings, load_settings
from .messages import DEBUG, FAIL, INFO, WARN, set_verbosity
from .version import __version__
