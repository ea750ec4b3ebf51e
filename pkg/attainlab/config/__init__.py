"""Environment-driven settings for the toolkit."""
