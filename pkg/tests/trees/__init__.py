"""
Tests for species_operads.trees
"""
