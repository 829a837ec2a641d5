import os
import sys
import streamlit as st
sys.path.append(os.path.join(os.path.dirname(__file__), "modules"))

homepage = st.Page("modules/homepage.py", title = "Local Boxicity Explorer")
exact_values = st.Page("modules/exact_values.py", title = "Exact values")
constructions = st.Page("modules/constructions.py", title = "Constructions")
monte_carlo = st.Page("modules/monte_carlo.py", title = "Multicyclic components (Monte Carlo)")
bounds_table = st.Page("modules/bounds_table.py", title = "Bounds table")

pages = {
    "Home": [homepage],
    "Graphs": [exact_values, constructions],
    "Numbers": [monte_carlo, bounds_table]
}

pg = st.navigation(pages)

pg.run()
