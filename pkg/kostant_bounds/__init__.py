"""
Bounds and exact counts for the type-A Kostant partition function.
"""
