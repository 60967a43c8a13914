"""
Tests for species_operads.operads
"""
