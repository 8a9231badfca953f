"""pipeline module"""
