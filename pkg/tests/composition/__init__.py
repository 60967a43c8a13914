"""
Tests for species_operads.composition
"""
