# Core domain package marker.
