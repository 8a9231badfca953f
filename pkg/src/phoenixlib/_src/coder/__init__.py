"""coder module"""
