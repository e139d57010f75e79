"""Identity suites and reports."""
