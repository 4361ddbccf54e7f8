#!/usr/bin/env python3
import argparse
import glob
import os
import sys

import pytest


def main():
    parser = argparse.ArgumentParser(description="Run zforce tests")
    parser.add_argument("tests", nargs="*",
                       help="Test files or patterns to run (e.g., test_forts.py, forts, cli)")
    parser.add_argument("-k", "--keyword", dest="keyword",
                       help="Run tests matching given substring expression")
    parser.add_argument("--slow", action="store_true",
                       help="Include exhaustive order-6 sweeps and order-16 enumerations")
    args = parser.parse_args()

    tests_dir = os.path.dirname(os.path.abspath(__file__))
    all_test_files = [os.path.basename(f) for f in glob.glob(os.path.join(tests_dir, "test_*.py"))]

    if args.tests:
        test_files = []
        for test_pattern in args.tests:
            # Allow both "forts" and "test_forts.py" formats
            if test_pattern.endswith(".py"):
                test_file = test_pattern
            else:
                test_file = f"test_{test_pattern}.py"

            if test_file in all_test_files:
                test_files.append(test_file)
            else:
                print(f"Warning: Unknown test '{test_pattern}'")

        if not test_files:
            available = ', '.join(sorted(f.replace('test_', '').replace('.py', '') for f in all_test_files))
            print(f"No valid tests specified. Available: {available}")
            return 1
    else:
        test_files = sorted(all_test_files)

    pytest_args = [os.path.join(tests_dir, f) for f in test_files]
    if args.keyword:
        pytest_args += ["-k", args.keyword]
    if args.slow:
        pytest_args.append("--slow")
    return pytest.main(pytest_args)


if __name__ == "__main__":
    sys.exit(main())
