"""
Callbacks package - registers all callbacks with the app
"""
from callbacks.report_callbacks import register_report_callbacks


def register_callbacks(app):
    """Register all callbacks with the app"""
    register_report_callbacks(app)
