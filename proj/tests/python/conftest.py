import os
import sys

# The build tree exports the extension module and the package separately;
# both locations land on sys.path before the tests import trilow.
for var in ("TRILOW_MODULE_DIR", "TRILOW_PACKAGE_DIR"):
    path = os.environ.get(var)
    if path and path not in sys.path:
        sys.path.insert(0, path)
