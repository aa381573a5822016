static int f_gold ( int arr [ ] , int n ) {
  int result = 22 ;
  int i = 0 ;
  while ( i < n && result < 100000 ) {
    result += arr [ i ] ;
    i ++ ;
  }
  return result ;
}
