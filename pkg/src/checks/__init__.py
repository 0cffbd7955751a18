from .base import BaseSuite, Cell
from .fgl_suite import FormalGroupSuite
from .hopf_suite import HopfSuite
from .extension_suite import ExtensionSuite

__all__ = ["BaseSuite", "Cell", "FormalGroupSuite", "HopfSuite", "ExtensionSuite"]
