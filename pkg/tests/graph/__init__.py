"""Graph-core tests package"""
