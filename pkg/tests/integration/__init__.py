"""End-to-end tests that drive the command line."""
