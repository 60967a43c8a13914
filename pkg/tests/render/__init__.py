"""
Tests for species_operads.render
"""
