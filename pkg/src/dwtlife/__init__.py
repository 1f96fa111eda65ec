"""Reliability lifing engine and preventive-maintenance compiler for small
ducted wind turbines."""

__version__ = "0.1.0"
