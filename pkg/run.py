#!/usr/bin/env python3
"""
Descent Census - Run Script
"""
import sys

from census.main import main

if __name__ == "__main__":
    sys.exit(main())
