# Fairness simulation package marker.
