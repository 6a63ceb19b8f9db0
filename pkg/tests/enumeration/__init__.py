"""Enumeration tests package"""
