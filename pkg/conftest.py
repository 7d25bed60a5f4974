import sys
from pathlib import Path

# allow running the suite from a fresh checkout without installing
_src = Path(__file__).parent / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))
