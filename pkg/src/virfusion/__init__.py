"""Exact representation data for the Virasoro vertex operator algebra."""
