"""Numerical services: spectra, criteria, attainable sets and presets."""
