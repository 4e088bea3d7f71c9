"""steinlab: exact linear algebra, modular representations of
symmetric and general linear groups, functors on free modules over
finite rings, and Steinberg tensor decompositions."""

__version__ = "0.1.0"
