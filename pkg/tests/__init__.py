"""Test package for GitHub Stats application."""
