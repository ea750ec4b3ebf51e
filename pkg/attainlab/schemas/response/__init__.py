"""Report schemas written by the CLI."""
