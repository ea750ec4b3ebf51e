"""Model file schemas read by the CLI."""
