# Fairness interventions package marker.
