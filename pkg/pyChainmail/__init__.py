from .pyChainmail import analyze_graph, family_report, certify_family, tait_report, pi1_report, prospect_report, format_analysis, format_family, format_certify, format_tait, write_tait_graphs, format_pi1, format_prospect, pi1_all_valid, AnalysisReport, FamilyReport, TaitReport, Pi1Report, Pi1Row, SpinRow, SCHEMA
