import os
import sys

# When run from the build tree, stitch the freshly built extension into the
# source-tree package before anything imports braidhom.
ext_dir = os.environ.get("BRAIDHOM_EXT_DIR")
src = os.environ.get("BRAIDHOM_SRC")
if ext_dir and src:
    sys.path.insert(0, os.path.join(src, "python"))
    sys.path.insert(0, ext_dir)
    import _core

    sys.modules["braidhom._core"] = _core
