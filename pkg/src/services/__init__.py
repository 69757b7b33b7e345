"""Application services: experiment runs and oracle property suites."""
