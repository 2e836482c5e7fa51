# CLI package - command implementations, JSON reports and the benchmark harness
