"""Sweep every ordered pair of minors for n = 2, 3, 4 and print the case histogram.

Run with ``python3 demos/sweep_report.py``; set QMINOR_JOBS to use several workers.
"""

from qminor.verify import SweepConfig, sweep


def main():
    for n, size in [(2, 1), (3, 2), (4, 3)]:
        summary = sweep(SweepConfig(n=n, max_size=size))
        print(f"n={n}, sizes 1..{size}: {summary.passed}/{summary.total} verified in {summary.seconds:.1f}s")
        print(f"  q=1 failures {summary.q1_failures}, descent failures {summary.descent_failures}")
        for tag, count in summary.histogram.items():
            print(f"  {tag:>4}  {count}")


if __name__ == "__main__":
    main()
