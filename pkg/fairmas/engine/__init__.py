# Simulation engine package marker.
