# Utility optimization and game analysis package marker.
