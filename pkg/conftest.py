import os
import sys

# Make `src.` importable when pytest runs from the project root
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
