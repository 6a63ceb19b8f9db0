"""Spectral tests package"""
