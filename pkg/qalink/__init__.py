"""Quasi-alternating link certificates, Goeritz determinants and branched double cover presentations."""

__version__ = "0.1.0"
