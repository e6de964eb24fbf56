"""Shared record of acceptance-criterion outcomes for the terminal summary."""

RESULTS = {}


def record(number, title, passed):
    RESULTS[number] = (title, passed)


def lines():
    return [
        "%s criterion %2d: %s" % ("PASS" if passed else "FAIL", number, title)
        for number, (title, passed) in sorted(RESULTS.items())
    ]
