# File adapters package marker.
