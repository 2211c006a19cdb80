"""Pass/fail lines of the acceptance run, shared with the terminal summary hook."""

RESULTS: dict[int, str] = {}
