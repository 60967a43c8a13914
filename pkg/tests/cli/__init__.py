"""
Tests for species_operads.cli
"""
