# Tests package marker.
