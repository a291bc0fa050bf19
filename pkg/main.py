#!/usr/bin/env python3
"""
rankone - Main Entry Point
Existence, uniqueness and fitting of rank-one tensor completions.

Usage:
    python main.py analyze resources/tables/table3.slices --field both
    python main.py solve resources/tables/table2.slices --field real
    python main.py fit resources/tables/table5.slices --full
"""

import sys

from rankone_cli import RankOneCLI


def main():
    """Main entry point for the rankone command-line application"""
    sys.exit(RankOneCLI().run(sys.argv[1:]))


if __name__ == "__main__":
    main()
