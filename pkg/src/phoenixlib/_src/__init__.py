"""_src"""
