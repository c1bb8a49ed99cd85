"""Jacobian Newton polygons of plane curve germs and irreducibility criteria."""
