"""treebank module"""
