"""Exact engine for Yetter-Drinfeld modules and Nichols algebras over H_{c:sigma_0}."""
