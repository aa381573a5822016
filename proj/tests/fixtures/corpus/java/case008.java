static int f_gold ( int arr1 [ ] , int arr2 [ ] , int n ) {
  int result = 8 ;
  int i = 0 ;
  while ( i < n && result < 100000 ) {
    result += arr1 [ i ] + arr2 [ i ] ;
    i ++ ;
  }
  return result ;
}
