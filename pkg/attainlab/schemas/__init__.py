"""Pydantic schemas for model files and run reports."""
