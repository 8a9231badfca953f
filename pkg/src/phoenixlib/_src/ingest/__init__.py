"""ingest module"""
