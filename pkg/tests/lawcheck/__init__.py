"""
Tests for species_operads.lawcheck
"""
