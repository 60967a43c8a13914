"""
Tests for the operad registry and selector resolution
"""

import pytest

from species_operads.composition.operad import CompositionOperad
from species_operads.core.errors import OperadNotFoundError
from species_operads.operads.nap import NAPOperad
from species_operads.operads.registry import (
    OperadRegistry,
    get_registry,
    operad_instances,
    resolve_operad,
)


class TestOperadRegistry:
    """Test registration and lookup"""

    def setup_method(self):
        """Setup the global registry"""
        self.registry = get_registry()

    def test_base_operads_registered(self):
        """Test importing the package registers the five base operads"""
        for name in ("nap", "prelie", "mag", "shmag", "com"):
            assert name in self.registry
        assert len(self.registry) >= 5

    def test_unknown_operad_lists_options(self):
        """Test the error names the available operads"""
        with pytest.raises(OperadNotFoundError) as excinfo:
            self.registry.get("lie")

        assert "Available operads" in str(excinfo.value)
        assert "nap" in str(excinfo.value)

    def test_duplicate_registration(self):
        """Test registering a name twice raises ValueError"""
        registry = OperadRegistry()
        registry.register(NAPOperad())

        with pytest.raises(ValueError):
            registry.register(NAPOperad())

    def test_operad_instances(self):
        """Test the four tree operads in order"""
        assert [op.name for op in operad_instances()] == ["nap", "prelie", "mag", "shmag"]

    def test_planarity(self):
        """Test which tree operads are planar"""
        assert not self.registry.get("nap").planar
        assert not self.registry.get("prelie").planar
        assert self.registry.get("mag").planar
        assert self.registry.get("shmag").planar


class TestResolve:
    """Test selector resolution"""

    def test_base_selector(self):
        """Test a plain name resolves to the registered operad"""
        assert resolve_operad("nap") is get_registry().get("nap")

    def test_composition_selector(self):
        """Test box:<q> builds (NAP∘q, □) once and caches it"""
        box = resolve_operad("box:nap")

        assert isinstance(box, CompositionOperad)
        assert box.name == "box:nap"
        assert box.q is get_registry().get("nap")
        assert resolve_operad("box:nap") is box

    def test_nested_selector(self):
        """Test composition operads nest"""
        nested = resolve_operad("box:diamond:com")

        assert nested.name == "box:diamond:com"
        assert nested.q.name == "diamond:com"

    def test_unknown_kind(self):
        """Test an unknown composition kind lists the valid kinds"""
        with pytest.raises(OperadNotFoundError) as excinfo:
            resolve_operad("star:nap")

        assert "box" in str(excinfo.value)

    def test_unknown_inner_operad(self):
        """Test an unknown q is reported"""
        with pytest.raises(OperadNotFoundError):
            resolve_operad("diamond:lie")
