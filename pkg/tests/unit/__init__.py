"""Unit tests for the attainlab services, schemas and helpers."""
