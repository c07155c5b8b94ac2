import pathlib
import sys

# Make the shared helpers importable regardless of invocation directory.
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
