# Service layer package marker.
