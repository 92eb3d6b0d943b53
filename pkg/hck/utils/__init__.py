"""Utility methods/classes for the Hodge-Chow Kit."""
