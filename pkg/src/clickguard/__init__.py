"""Clickbait headline scoring: preprocessing, a from-scratch neural classifier,
training, tiered warnings, and a browser native-messaging host."""

__version__ = "0.1.0"
