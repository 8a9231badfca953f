"""enrich module"""
