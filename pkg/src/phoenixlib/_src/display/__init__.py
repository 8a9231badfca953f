"""display module"""
