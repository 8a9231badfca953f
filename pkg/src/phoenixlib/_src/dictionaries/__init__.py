"""dictionaries module"""
