"""The desk-scale battery: what a clean generator looks like, what a
GF(2)-linear one looks like, and what outright garbage looks like.

Run from the repository root:  python demos/02_battery_tour.py
(takes a couple of minutes -- it runs the full battery three times)
"""

from prnglab.generators import AlgorithmId
from prnglab.seeding import StreamSpec, make_stream
from prnglab.stattests import battery as B


def show(report):
    print(f"--- {report.source} ---")
    for r in report.results:
        extra = " (complexity saturated)" if r.detail.get("saturated") else ""
        print(f"  {r.test.value:18s} p={r.p_value:<12.4g} {r.verdict.value}{extra}")
    print(f"  Number of Failed Tests: {report.failed_count}")
    print(f"  Failed Tests: {', '.join(report.failed_names) or '-'}\n")


# A counter-mode generator sails through everything.
show(B.run_battery(B.StreamValueSource(
    make_stream(StreamSpec(AlgorithmId.PHILOX4X32_10, 0)))))

# MT19937 is statistically excellent *except* that its outputs satisfy a
# GF(2)-linear recurrence of degree 19937 -- far below the complexity a
# truly random bit stream would show.  LinearComp catches exactly that,
# and nothing else does.
show(B.run_battery(B.StreamValueSource(
    make_stream(StreamSpec(AlgorithmId.MT19937, 0)))))

# And a sanity check that the battery has teeth at all: a counter is
# rejected by essentially every test.
show(B.run_battery(B.CounterSource()))
