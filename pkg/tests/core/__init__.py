"""
Tests for species_operads.core
"""
